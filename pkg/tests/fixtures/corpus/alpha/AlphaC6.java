package alpha ;

/** Generated class AlphaC6. */
public class AlphaC6 {
    private int f0 = 0 ;
    private int f1 = 1 ;
    private static int s0 = 0 ;
    private static int s1 = 1 ;
    public int shared = 1 ;

    public void setF0 ( int v ) { this . f0 = v ; }
    public int getF1 ( ) { return f1 ; }
    public int peek ( int q ) { return q + 1 ; }
    static int twice ( int t ) { return t * s0 ; }

    void work0 ( ) {
        int v = f1 ;
        // keep going
        f1 = v ;
    }

    /** Work item 1. */
    private void work1 ( int p0 ) {
        int v = f0 ;
        for ( int i = 0 ; i < 3 ; i ++ ) {
        v = v + i ;
        }
        while ( v < 100 ) {
        if ( v > 50 ) {
        break ;
        }
        v = v + 2 ;
        if ( v > 40 ) {
        continue ;
        }
        v = v + 1 ;
        }
        if ( v > 0 && v > 1 || v == 7 ) {
        v = v + 1 ;
        }
        f0 = v ;
    }
}
